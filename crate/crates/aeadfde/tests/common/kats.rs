// Frozen known-answer vectors computed with an independent implementation.
// (key, sector, iv, plaintext, ciphertext[, tag]) as hex.
pub const XTS_KATS: &[(&str, &str, &str, &str, &str)] = &[
    ("1b2beffe2f63d868471c720411a3e38e15e2a62c99538d00e8706ae0ed70169d9702f09f12a004c668280b6d6b4c0e23bf29736b3325b00c926415feea1ca8cc", "5", "05000000000000000000000000000000", "9b55119d7653d71c829a5b7a9b6726e4aeec18aa20968413a4563cff64243d42f26b4753ce5509422efa1e76b94e89180c574bfb86dad0bb2d83f28a9107af1f4f8cdde4a8786059badda2cc42cef2cee3b710d017b8f5b5aa1667be9112ccab2411e944a4cf497f3241205ae9a6a762182fc1b5aa4ec9ca318eacb99840609b6a910d12aab7afde261c1b885ab3e9a0b1aa6cd290b99baeee026f77fe33321e94cb1b822413f350c1b68575f7a40f55bf1966f7e693603cee32e2f314b8d83519dee57972980247659b74f7725ec96aa3f7370f4d313f4f30f95702f8d574db70bf8e790bd1bb3b72b1c3240b8bb92878e308d5d666aed937994ff14e1dabc77533385dffc786c18a0582be93d1a2dfce40fc521132ff4c599fb93e9c890026b9195bb1efb0ce81dca2f6d59fe129879eed98ec640a3860e44a34cd1fbaa43ed419fea96c1e0886673e157dc8d5722fb489941dfe98d4d3136df5787c9112521298e72fe15c4dbcd606a2ff9d7d25be0b21a6c3b0a0da2015c5b4fc11e77bc46ec38c5e32722b87fc3e8800a7da7ed2afc05d4eb034eca2052aff7e418b82ee43e10a81270bd5818110b8706712dbb9a6701e8f3e89130f6a1e29cde9311d36287cf183da11888824f507daf173cbd96c5c4df6708e762e2402ed944287529649f0594c22ceeaa643b284993921c40a6b8d1e29c36737b6b9c495441435c336", "47e4d3007e0e9e3122a372a5026345c8ae8a8d5592f88b2e44692c3a8a7173333edfc938aa94244fb5fbaac06d3302e0162fc3023939dd8f2897ae115a62aab834f440937c2afa4585ee96e02807ddafa3feb4a3c635e2ee10917e6bcd639aab9659fd578523bb4f21e55a9a370f6113cb39b03128c628cbd1243c39c62b6890f11ce7cdff78ed491cab7cc7d856a0c7f77c645a133f6d02a3d76ce77f5b2d417151b98cac80a2f5d14840053125b04ef5edeccc50669eef2f1c22018e0e311da1e1b1fae616f2fbb38fa48668e2d966c9d3cb249c7782a2372cecba467245736bdc795f14c7ed4ca5cf840bdeb67100e83171b86e1cde3156d6f39f2f9a425113399dedab1a1671ba9c79f517ad87e07aaf8ad2d0d765f99381f603334bcfd1742fc139a772bb34ca268aec73a97a8e478b934131a37b17daa2a085a9e6a85f214f6aa74f16cf2f9824c3c11f7392935f4d26ef111cd265f955a8905204727b805715dbef598869040078788400f33eb20b2ae9b35e6ab0404d722b38eed87629808c3b9e950d1012f987c723232f34b11e2af19600910d6b4552ad10552722fca341ec0f78e1bdfc8547cae8179a8befc5ac048dd36bf5cf81ef89b07a9b2215fdaf43e508273e6597c93f9519174a0d19eb15cfd4624a3672771c3128bab175d0dff5581c27f18cebc1ec4c288f2a5b21ee6f7c543a8e8ea36e60406b98aa"),
    ("64763b48466c3fa256bf0f8afdc1817ce8f5a889f4965cbcef41dbd759894165aa69f47fff74ce582e2581863a957647c388a222fab99b402a5e1340127ae2cd", "123456789a", "9a785634120000000000000000000000", "dcffa921c41223d85286f1c5f56769b7ea47dae9bb09135dffca1e372b98855afac321d0773380ea700736d181bf4a6662b712562cda47d1b6f48b73bf0c7518b58e59e80da08053c552118195ea36e989285d933b325412df205546661e5ab37de37fe51ff1cd3df52ebdbb77725b38c18bd58c83e77ec2721c2bdcfc6139a4bfd09d76522b46d073b9d235efcfa5c05f16199760ba8316e10369f3e078c05d734a581aa0f015bf6bacb08fe0ac04efdff811f818a55a660fad37bcb31ebed71015cac661b9688a8df69db959e9de1c1e525404df05f21cd2c77c7bebcde7d4b2e239c87f64353062bc81dbb85a34baabbf35c92eb83c4e4d42676844c8b2a69342b99da4b13640da2311b6ba5259362fd459a1b6680db4810ad84a80bafe15351e901147f96d0abcec1aa88e4ba29aebfbe49dd6451548d3175f68f589dfeb6adf61488c08f62421454342a8a9f82a7d4ec251d730b3b93e571ca55e6b4da68ea7e1e4bcb61c00d96860536fa487eede47fdd3b38c47fe7dccf9eba1a71f561eb6c64173c63d8ea4204f2c56c3f09f78c4f1c9d7b4f9f84f371b04349cb6161ebafedbc5f6709399f1b42c330dcf7b5460586a1bc7fbd26ef983bc88e3472a7572e7ea4e4a261ec70b64e43f982c7d368e7a2661fb9853f1c75776577c5ec3d3f75a54f38b8263d29b39044b29f9362e94418384470915866ee8a67aaceb33550986c5e038802053687a52c0ab22341a1f74f6ab359f41feee330675377a30f36f2a540757a8549bfa198f650abc8f63a0b3186c9188cfe2955a532a3b2237c015948852433545b538f07a69c0463893807fb9b716a4a0c2c64d7feaa6420eaf0f4182756307622c2ad0ea5c6b337e3fc1c77b1c2a12b7f2ec022287551595ed6442b3567ec009c83354335b4d30efe5b28e38b321e61eeb177a57ca7bc95c1e69da044f2d556bb0e1957707b7804d879b372d4f55f0cfda952d1728f92b9339fee2e9caeafbfe56ab89bbd2eae7582ac1b5e3c07c8626b8e6dceec8ed2b3e5db7042292ee7037b5e39e5fac27cf99208f2e470017b97768a2646f1c63c037534ad23c7ea0d6158d100a499c1fb49c8db51c1042da364910926d2044dcb61292f0b400605133d5a3e83f0380384aa4dec6ced9ea7960217197bd78a01ec66e3ed2bc9eafaeb110d1353fc76c145b6afd1384700a9a872f21609663d98987f22057c54ef0abe369e807c8a457387f5314ab5a403f50a04d62d02019b23575d4449d04765ed8fbdb6078ad83ff9aab7482a2ad88ce91911afa6321b905ec9d2c3d5d2a5f1c86381640cad35eb693bb2af6e412caf229e3826cd0722251a32c15ba3f3c12f988f3a317a2a840add01d1a583324fa52b0a9d4f4e0791971f9e1a821cfd77265d8046b66630798b34dd7bf66e68597db7355c0b7912a180fc791bb60230f890f4c7c02d28e1a3f3a82eb4b0be822d24c3a4e3001415bca855bf0b49579b1d54976206ca9fe7c4d6c7ddbc8cdce48f6d7099f0ff2101b9c7bf0fa6b83149e65fb1a95bcb90251e1e2c78b7f59ab63008073a33c943e3ffb75e0e061f9607eeb77b0a37f276b3de7c1618b12598d4fed269673618ac08e1a0a047c74ba183ebbc4ebf11397148e0a7a777fcbb0def94005a0f0af2b01b6b380d588ca8203b3513f54e8b827189574acebf7adae0bb0cc9b4c5e693021f6e8dbeba19472f09806707a07b974a9a794cf14657f4a99c0f200bd338e665de680e20979baac66bd68614885dca19fe9f53d9616aedc1de483eda6a7aee08877918261aec7ebe6f090e94e28a9d8309363d5d4d3f67e623ee2e426964571628761718aabde3ddbbed59d17f2e0e4a93e990bb592950d382fcb1ecf5502b986546354b2ab188616834ab254d7ac2aa6386374a865598bc5ef0cab7ba98135a6aa93fb425cee220badd2b899a42901bbc9bc736dca8dfe4ad2230a156446949cc16b5aff7525459bf47e7827c8d3ff4e374947e0ac571c0340b1990e184282bd1249a338c7b136fd3590244920d6f0e37f4956a80e6745626d8dd7f6051919101ddd86c9ac888c13107e1edecb7f9b3ec47c2b53edb694ead593e21a77915f9f68fee75174a48822abbdd617937e11df573ae4cc108180b48b1efe7aca01b22bde8f10ece45591e6dca8843a6e93a94a30bb7b5569add9d853049c25c2aef8187debfa8b2b124f3197520f59915e1cc318582b8f7262dc0ab978dd091e788e2c798616c450a40cdadded38a32a474597380876ff40d839dcabfc073c9f767030d43975765aef4e8982fc67ce96983f396f62d2e30df02127554c06bf41d6edfc94d55cc189e9531b8cca62dcebfc4930f48f6af4a6c16e3964633628b097fd7518506bebfd146ffabd043d4a19a4099f05d34d4e750abb3ae3a6fd2b2d0a9fdb902f1e680fff6aa8a3dd344390e4cea0c3493ab25c9ac49b6c22cb5e14d8a38ed9e12fbbe609949daaddcd5db6fc2bda5136329ef473dd658b61779a8bb76c9903222c75d59e052e21cc0779708de2c1f56ffe0407f1efdc045b3667c18c014826a2f5fcdf3d132eee78b4f818010c94c8c858742b3f18baa89ca4b9837495d03bfef78c20036743f8ec256e62164ab09357ddb696e292eef01e2cc1dccb14166d0f76a2baa44c5fe1f2a867e3fbba4d35fd560dd62fcd3f92827ab2296004ccad67fc21a98cea6b32d070f970aae6a37371e045c582848451411fdaa984fea0ffe3a4cd703a9ac2c16f494a58ff5bb4e5c6c15bfc288d44caf93d3a86530ce7c9bfc5a904aa96fa39b7b41f765f415db68d10c85450f4c6f8c05117630326da316209237075592cab9ec3c61c7e6668f37a9eb4051887c3fe45975f424cf5393da74bceb83d86eaac41167cdba9d428fdfba386588238dd916f361b3a086fe7a1285ca63c44e083d65adaade9c80bc39d8afd5f36051d3107f925f2fd73ca69de957bf913f7dfdcfa86aebfcb52c6ae63da9b238ed051f589e488a487a51f994ff284fa600ec5f6efd4fb94d5a7cf0e50509845b4632412d8ee7627484b40d8c6afce492f9938eea460bcf95df851d145ae99b76e34dd07d6366b34f8964e3bfc97953bb74ddc2a6e93dcdd06502347ba79ec5ef36820c72d6c39125ddb5caace6ab7f6f5f1f8d50db79aa7a945d0d423385426267a01927f0718f0bad324ff4df401e6b376cff30f299a5267e9886c54696640e9e5bdbb3e0788467756cb673b3870ef0ac25964c1362d6816cf7016e932273e7eb002df7a6906308ba18d5315f65ab2f5e4bc6b5e1442ee0ddf23ce47fbc6c9ff257551b00c1873f819899f053f325d4f69cce02c0b21c4d929e80af6eb532020551b2de654653cfc64720f07eeea16ab872518a44e24c2d7e09eef4b95dc4856aeb7f717314ddaaff21badb709ac0b2eac4b0396bcdbce8c629d1a95491fe12120bc4a4980d17797ab26d62ae31e27cfbb0008bc33b3c28b788c668e40953bd20ed8f88b08ec216df7039bdd2575230dac8dca28aa84b533a787c51a1f784683ca796075558aa6f315e3828ef36869626e92726e8c23ea3b7910eac459e351f8df8ecbeebd5ab0b6a35cfdd187effe12f1ce639fe11c0ee7006c6570473b005bcb8183d7532e1276fb792fd00f896721a2b04b104a129d4458484c9696bdf619b9ae3355757ee59b33a79c0ec54f2eebf17f422f2aacceb636b92121b09e34a68764ddb15619aa9eae03fe9a23c503579e1b7c3fb17568ef9ec870af57c891889c6ea0175a020ef3d92969a9f1d32ead8c04b23042325ac35f36220cced9e1e062f4b09b2ef6af76c3d38bfa5da8067c62e018a053cbda503d5e41cb114971ea98f6f6031f8ecb8b4ada173e6ef8729df3205113c717d7825faa0ec24556aba24b52c765a2041fdbf87286e96ab14d4c77cd475b6ad2857b24f66957ad7176b2d91542c41b70de0b9058e263b9ea63da8b10424b067ecc0498f7e9e6995dd58b07fe1755e9fea926f46d3dbfc4f690e216b2338580be3f124f181ac8a21a3cf83e2e5c746203d02e4df75fb212e62d4af2e9ca9963add28e2ec106ddf8af48ccbe50c21945f1b8b663dec3dc70b191973e800eec595efb31418cfc775b3d26600604439de6a26a2efbcfd6ddb50a114cc9be8221a3d3d43a26605cb07aca929ba07ea8c1fc93d8791496c03022d58dd6d02dfdd6430cffbaacc603f9cdfd6a68820c89b7e0342570b94b050657302fcc8eb75925ae95e278cd4dc9572dc5bab70047dd185ad869f5840d1e2f8b5e436d7db1f64fcb2bc5200e7a17f99331115d74233b503928e037db4f13744dde61e19f762c6862858f5db80d3dfa639e3ac6c4fe08eb66c699d8314fe7bd2321038b2b3d82b2a55b1cbda895de105bbb9237a1ad9203496d65b579c8ead5abfbc8f6e5b6ca4449334aa1d2e76663751d1fa57e9d3f75b47c1fcdb290457443e5bc3ccfe81d0eb1483ae446072335047343d5235c2fbeaaa721bc8c83580d7cc9867d4c4585780b59f44da07236a0a093f044f0bf74206d6c707fe3f3c2f1272f409c9652744ae6b2bd7cafb7c43640a87035f9f31b7b4655a069f42e8f905bdfa33cf41c32edefd7a35c04907b40b759eadcd098cdcad5cc8b1d642acccd5f3d7f5580ef160106ed49a64e99ec69b5cadd7c77f23a677dd4bdf20645a1eadf916fe0ef804787aaa664a1a6e751b2fa937e4d6542ab7df520bd963bb77048e120605baac3c88b5978f73e9e112c950fb1844916231d52459619e50b9c7c88c9987f29eaa7e0294a2a22e786bea3dee0847b5863a3d9033ae0f620c1994d9544e0f8d804f55ac618f049bcc01b66bc438a21427509e2645de367bccd59f0fd3b0ea1f1113420bbc2344718d704ab497aaa21cfbefff64eaf9088a263d86de82340750c74e39da554409941f3ead00e0567496b39c1916841c805a1ea43473d2ffa0679e97776a23e5d0f098749eeffe85c684b0366f44c271de8ee22c8e0884cc903eb431ff57001aa18264298e8253c40d4bb7157abaae5e2aa371ca9ab55a54614b41611c977806d4df7e22b58af12c2d9e08a3e287853953ad84181d19f5f869ebdc151da48700f171201c768ce6bfd90f9f618e0ce4ace28d1724cb66825d9a1efb047764ca9db7e091139f9868ecf13d73f9cb95a2579cd189ce83dea2ee6a46f217d0cda2cae55369d8e9ee61466acd2935a58683fed590b49539d011f7689bed4c0699d4474fa823b595caae74deae44208a5f19f86c81b96d555632e0b7116a4626fdbc87d4bdfa2c2f02a76e3f89e0ccdeb51356f60d8722fde5e48f8062ba5b5ca8bc95cee86cdcb9ddda29604601608fa75c82acc67be7da12f557108a26040e8f542e411c18b99702fee8be6c2ff3744b44fbfcfcb6d942d847ef14a19e9be29b6dee6305f60a03861a0152013b1b46e0a3e4d32bbfacedcb9e588787c379ac18dda6667803e51fb5d012eb1ea35aca134efed0de78857cd423cf6515bebfd3a632a86949eacac4a4cc52d1f09079f52cff2672ff85586293368f13a3c91fdd97d60ab3dfa17086f1c048154d8b87dcdce53561bc807a61c4c669acb23400946e093a6c527f71589ffe69b347d177f296057fedbcc57a0d9d3dac7f640e136bd1c12fb003b2f5cf65004fcca3393d893a4edb95ec42b46eca48e26a06340005aa7ba645014905310b90ecaf4a9972e7e88e98229872f688ee375d006625b7bdd986e006c049bfe4c9b7c3c2e9b31c9faae28cc3be1ee02c3caff1652b3db", "398d24b20cd1816b32c09805cbcecc04214fdd2a68edc5888f33b7d1909dc65a69b61a0448a15f9b095df1be8e90144331a41456ee0cfd878510707c6410837dd659deeed0220bda5dadeb90cf740fb37055bd949944ff9d085472878b0f1c6ca49900c22131b4effe7b8f12b6e6ffa713d2e5efef95354f91749d8449f9a0cc0dced821418e5ee69deb8a8f795bb6ad23e6d16bb48ad483112ed3c805cf9650e11b62ad585e009da46e6ca8569f880c61216a800aa272128304ca74275353077a1d5a992d717197672baf9e276383864ce54b46f05cd8766860b1888dc9e6cb1fd0a1823eaf6116f1bb44f1206c7350e3175f44fa7a3197afdc4376407f4c8993071325c9705cb64b621e24c205f1d05e6eddcf3b6113ca239169802c9635125f18b1800db007db971b57555fd68bfdb7bf6682215a04d17b9021070ebc7f657aa91d39825a84e032648ca42b30e4b420485fe672e7fd658097d71ac416ad395d4d39a2624e784b71ea3b55ed3c9b70a926e7e446eafac8eab6879ee5762e93500ded57573711c19051d299534dad2757d81fe519ae7d715889858674fdebe3cebaeae022779996aefc0e1b7bf7f12d50c736f8b327f333a14fb61e405a336a2fe4c7172ad30ddc8820784eef19616cd1287cbb7c1f3e8b2e3c998c988fd5eafd5c72376a8fef1a7a8558c0062c5ba80838b5b7d06a34c3245b61f8f2d82f3e7c4dae2f5cd4c5cfe95d7ae7611e610c9991902b8b4030087a27eb8fd8b06901fc5d984c145845de09590d29e5f28e013ca8f25141c9d87657dd67dcf8f3f32779174015e394395dc7147e83ef1a0804ef7332de5aea6ebc7484d4202c9df2c8201f9795d6b83850600f7fca6a3ea610e81f3902fa404b14d126bacc2334d6df03e171ad528d1b189afb45fea27f2dd17948ebb7b1f8342e744b542184f0563c06e85efc78dc15cd3ca77122418a3469c054399fa9642d39e9e1e6eee8afe94fac154fc701bd7a66156bd1c865f106cd8cd6e6e73ceedf0a49b0d4b6b970122fe898f7b8f3020ff4333b054ea0b5d653c10273360b9a7a2c996c6f0d7dd716e47fb3ba1743ca33ab1b46ae0c83925ff98a7d99c2075a753021bc73376136b90b8ae847a569244027c621bb33f56473a4c31bc70967df8a12a16b30b58084e86d88581ee290a42b723008ffec81d5160cd12b3b78f6717e813762acb0e933d70666ed0d3bb696f6b9c3ded94ec4374ba18c46fc2ddc8f115c22bccde9baae54b913c4b55381c3a98f400b12e27c3e118aca292bb798989e18507adeec12db3f7d7a3ec05a48c598e1b2e0f160916e29740219e5dd52458e3e373d07895bb003f6042b8158e26b51d0eac9c94d3b7fd7a2966625589baf11312367fb3afdd6cf121b6caad1d7b17d81b0e5b897396217405113a87332c7ede3ef7302a8bd63a02b05d9e7cf6b312e62e20e414d9597a33ebe58a4bde9589fd244ed01a563991d325dd080280507e6b6bd7b02a12ceb73bbf3fca3cd126fb44997e080bdbecad6d5c2b4951831361d8e4d33645e8cd510cfe8d3fb697861c0ab631a5eaf83b8d5ddc5e3982b9d5a9861c51cc3f454e8d3b46e46429ace8662e0181cbcc7b9fec2cb28c469fb99edbd533bbd6e4a8032a8e4fd5b03c9349cc5cfc54779b3fa836f6cd400e5845e36c51de378d7c9428042298afb4cd62646cf11d365a4cbcc74a0032ce1125769b1b78c61243b7d4ddca23922725d8c9c83f250ee78d5b1a169ff40b82205efd935f28ced60d3f3117c8d95267604620c6a25bf7da38f25836d579aa8060d013a19efb653a32aa86ab9638237ff75bb2be8d291be27c3bec8c6e284b24ca93415721cc311a4aa64d266f7632fa945df417a7c6a37365d96a065d5e6dc2715ce342eaef199137a96a5e2715abc5f1e293e751da3288a5a54a191d610cb8434af9b460333f672a84c52263c19856a05507f6fe6a8470b54e0ac3f8f36291a9226ac56dffbf474376d8bea19edf6a22bb564443247950e6b4b464c2cd1f5f157f64d860f3ed1094de8c0352a2ca1afd958ec56f33733dbb117aadd57409fe984458d5250ce932d88735d14bd5fc4c0a67a1a4e509db0cf8677080dd43d2223c6feb72636607888e8e85d35c510737d96b056cc2ba03ee003525d93dfe6bc4c756d9ac945de1954fa8c8f5fec30aeda571019d7db14dc58bc2f18628739a45e36e0494d1e33f5800d42e15ccc99116357aa60ed11f2e1d8ae12538e4e6544251488e42c1fb9d6ae181f197574ae5744e220a91f236349750e78084953e5bf2ffeead6eff8065fde1879ad3426a9c18ea4485724ce1747f198de28ef56126c45a53fa7d3c7e9e3334ab0e400f1d9ee97d1acd9c88ac683d3ff0c547cad8be95b4fca35e5b220438844a3e58898ce49fdcfebc96498c85614f4f14c5af40d7b2bdafda50d1636867ae31420a7b3f6fcb18ad33b7f44d741601273dc8929262bec810479032aff6884528443cd342f4aa433ae0f84cb78d42cff64ef13c961eea0f659123e74f56df447407efa716a03407eb0b91d3199471d9b0a02eb1adc6c76dfcbb3259d25ec8894ec160657935b717917ed429366c569a32105ac87b691cae14273af1f4b702a7ca156ec2567e1198da915d2d9c82f054c8ab8df8ff50b8143f059681f15e9b699e16fc256ed785c0fdef711bca0a9e984d6ca970fd0a368fa891d5d75e9c259213b52994f7461900e26309e7b21186a55d474b32d679d57494cf58b0b1f4b7ad3bcee3b788bd3605832fdedff7df124a686f6451cc5989c3d2e5c7d54aa7e1e9e72085283bfa12a688a5746da4b86bf892310997953c76c3148817ee41cb233312edcdaf9683e4611ccc9f6e5af06ded997fdc6c711626881d187402a00c33d780916d67e14c491c769791d5c054da777145fa09caf1b71dd1b766d50dde904d758ea1d30a2db4ddf16a1d1a5f3622b35183b1434e10961fd3445e06240d46e0834b333b5be8b5542194c6723f5665cf4edf6dd926bc71c2b82b5b15a4d14c19d539008a95e837ddc60e7179dffbdfcb94eb1bb56a30d65260ebb92591cab2f380466e6cdb928e08d585843791a16f45c38dbe29d95ffd47bb9685feeb9819725b0f11ce752980d164b40b7acc4e5c98dcd8df82abd272ad7a524a9e3ea6eb1c866be21fbfbc15fb506f193a19ad0dfbbc8d6d7ab1f3b1e2b47e41aba2df2756a8428eedc8846c4187cceeecc1407bc85bbfc1f27c782775486a60c12e77109f7097a044038ff6039e7d10c635a42c3481cd25fb25d6cbc8d5bff5bbf3f5eb434bee80129cefa3058155331a0a5323fc259f347ab64ef28952080236643f3e354bd1d2946df15aef145a903833bface2303a1ff66d83f6782cd556d0bee01b822f7b85d5e73479346c780255e8f348d773286ea7a671dcadcca0c6862142e4adec51c0838778f130a62293936c41d861aa1386bfc4ca04921478b185ee189dd4072f67a113d368aab1afd401cafb491a4e942dda584ae167880e5ba7e37a13d180f79adfa2e8d9447e04681fb0f739e34730ef4499a795ee4d9372a7435e54d530b30ec7ccda77a0eca2d50825407cc5d615058f796bc7e242182bfc2d1885eae04ed542428e9f66a2fd8737590af3613f7ca75108996515d2130e45fa01e937d4a2951c8b957ce2e0bc56419c1832947e5dac74208c3a55259a485a2979baf6bae4c9135ff529160a42c189ba4c571781b9b1e94c8cc47b2d3d9d511600118e7c4288806bf564345cba142c113fe053dcdb2104c8d4f173b1d3e1b3b55dff31a738eef3773680d80f57e3d1874020c2142d739287ca2af27e6e0f6bb726ef308325c86c54c0e90083cba385169d4ceefce742490094b19ce7da6c3c8ce40da74063c3b3168061a3b9dd1deb97383aea4bbd7478f4013f8386a51c47d704494b92391543d435fb5feea1550d220047e3d2d28a053f05a7723d1b7f900cc796fc7ce66d45e68a3b9b779a1f4319156d63d93ab42836d9868b67f749e76043d11a2b21a169683d0bbbf50bb526cd255ef3eeaaf7ab48b592364bb69f6633175fede678a4be0a77dd540b469e46f77cbbf04dcd3e41f03a8f0a7410b4f035e12a2bed194da0e848d7a7c2bc101827f2b797c3039b7b66d48a33d852f4f19e648ab32eb2fd5d8d7e0fb6a4daaca8c0c6c04bf9e756fd56a2d26ed80b523d7bdde7c8cb07fbb0ce4ee5ed3d04f01959a00ff34f1f7681fa8d4f82745f701a697b3a88333e21c5a89d273f2f06013ef0f5087bf7f41d8f784039f9754b5ea497e4a2f990251b3ddbeef2d855a518026d93e29a25c2d7b84394681af95ea876f6845ed88144bd82d46f1d66c87516fcc16c808abb7656329ae5502363956fca42f12abb0e781650f43111bba1bce76e52bb882e8c6b839877ad090728c2289d16937747383313c2a153fce4c91da89bf5d4bd907da2afc75a431d559e14ef703767a78239468c0bc85cb4d5fc53cdb99494e5c5f8499f9053b6ca4081829bde79f8d2758361c409c92ddd57c456c43b2adfa7a45ad1f1d73ce81841b13407e8369eb0a9f276d476071dd2c9c70541266143fbc3be396088330cb216533d438ba9e49d0aeb14880c25e3c4935baf4e840c9d6db0bd4a74ac2a2a47681a137e0f22e2a2c1d371619c8048e4b0d3d876767d651f4aaff6040964fedca0e99b59963dee7f4467398f1c7d114fa185843c404bdea914b385c511394b4d98ff9fe534769ea48b0bdc5367f576c97670caf8c8483257d0c1e1a025e5f2b23a69bebf484cabb6daef456bdc04234c8a401353d5935538a049ecaa1e5cb12589dab8a2175b1fe37c9e497959301612250f26510ec6a78080c5d0bdb8bf39135a161f8b15733e971aea25a1e0241235caa8d0f521b7148f64233d3b328f6ad1da2f38c2b8f9041902753f64126ffcd1460f913db49da3d0201111478fd9d3da30b075786055fcea862d290cc185ecdeffa82d3c189f55c8130885b444720d4b09fb52118f71237744442ca54454ec3a7ee11f3c18b7b7764f9db9ab84f3c6d589aa40cb0d1b124f8329059f0f9bdb73a2335110d142aabea1b88e04104f3440bd1b3279c1c817cc157c17a25a2758d059cef812403fa3b5c7941bd15dde13fb77a637bfdb745d0ed3d1e753040db27025159a4b17adf55b1d1279851983e8a5faa886b5ca40f0b35c62fa6b66ef54f46f3b5ae3d1a6e248cd43887edc11227a61092ba6d630d4e5bd5424755ee411d1170a244b0727714f707d856a68ddeac4648e7f7a912714e2e56039ba65829cffd8ca502cf9f19c52d294dbc192b7d9d7fcfca750a79c26587bc780609a02ad88235752bed1da5836582bb141b2db7f75fbcfd353af94ee258ef641fcc643f46637fd4c076caefe03dbb9bd6f63472d05cc98391d74b167bfef912d81d69100e0c9a9814d379a5a3afe540fdbe4f2ea772c249b90d9c704a82a288dc7f9f453f836b06277ba70bf325eb9976fcbf370a43b74fed0eea7166a0013a0199b16036c71631ef97a104f453c670d535bea849ef391b6b77c3998f0155865bd19f4c282ed9ccb01262585ba3ad79f77f469fead9afce8b256a86f2ca5a13335f2750450f2e3c42a3ba9c1368e86d3cdfa5f7e1c3570c0616c03b347bc814d5ef46510d77a392ce6f880cffe253fd597f93c67de0625f09e3e716907fec76249b46c846bcf09a3a66a0aad50a4958ff20b89eae8d8e2469b0dd525fbebbb9d88bc073450e8a84d183c18d200acb5549d9ecee"),
    ("96ed3453aaa39727e5a191013fc0179eadce3ff5641313e5f63d4c7d3526f48e63ec803b583eeef5cdfce6e9940af91de0a5dc4f55dd396d1ef17bde83ddfe30", "9", "8a125cc04712258d96d8701d9d98c78e", "64da5170398d4579aa5b7455c49f7df207633ea71e33bbcba26336d5fd182bcdec8bfd84ee6f483e7695b0d80aaaf8d9c8e57741d9ecbe6a0ab067b19e3f77f61a90a132439465fe13d47c11dda1164016bde45a730338f5375774c2536fac6c2a2917ca9346407c604185a3f524984621d0a1f73e67bbd45e7baa6429833cd421d0c2f544ef3227340642278250b71e3a714b67fafbe81d11d32f0c73254d9c07c01a7dad0c640f4083887d507f03b93e4c3af409859107faf3952cadb132c5335880bb8f3a720bba37004f2a7a724bdcded86a546c7d15a31d2b38bdb2c5082e69b2266b755586bf6f857df6395cc876fae8939d6bb5016be401cbe9bb7ecc46e56aeb8393733f6475afdd7f8551c35fd1c41953e6a24acfd8d08f55aeb8d2702c33d9c856034b862d1c0f1f8f9a1c48b5f7473a67ce0a5c420f1d7495d9c6b46dbf8c4274424f8a2df1fafe93af3362ada09d595ad7084a3880bc394993f4216528d536aed02f3068d39404d54586359ef9fa3ce8bf8ccb6937d093a195bd4aaac5dd4cda88f6791602f982086683088c0e68f984a8a40018281624531c59958c334f345934d9ac6e5132a6ecfb774e348424b2680e6399c884cc6a7db7032b3bd62ce023ebb7edc45bcd2673105af87ea20389e33976fd96dd22f8101d8add519cb38ad2babdbe0981471da0212fb993f58179dddc7245e3502b8d4c64f3", "240f36843c9c69620938eeb650e34e2f3a3d5525ce9e107f9bbe4b468c9af498443fa818d5669845b27bf5d0249488590d78d262561b86eeac8e1aab89b0bcf961ec5479689dfe74172e019dbe500a81cefd38b61200cadfdb23729ff32cf6e258b7b26e01f44763a225f2ec35c29db5da9e6f9b710398d403e7e0dc4fc53757a7572a97695ff93e0ebb2089e1522754949bd8c4f3a5b0fd0e437662015ce6231f7d9533aaa79258639a9bda4e01b527431caee24c74117868b253c8a2805887159c36455c6b2d3f90d15eaf40d9c3463fa6ee8d66ff5617a44792b5b9ca61101d20bd3755fa317a53c7ad4792e7afcf95d08a7bd5a5a10d611952016281f32e5ed4319d8d5affca9b8146ed48f63e49c14eb2623d1cf12b0d9391d30d2285ff9fd0a62ee0feb36d066d75b03d9f982d14e7544bb08d67fa2199fe2f10c6c4342d01e9fbdd8b1f746331e734a05e7920eb3aa36f89b703866b587c69ce730013792ae887309c7c9bfdd202d78278462c363d085dc3ceb5a4f1f27b81f7469c361a7ba7d4917d67c10d918ed16035139a59fa507dcc2c2f34c7bcaecff6a64b6ca14937088467ed7ffbe724d6084d6fac513f176ccc180b4cf41c91348d409a0815363413248aeb36bacb87e44d0a7d54c683058cb637823a5bda2677eecd72cd7ba98164cd70a6238497a06d88a3ea1b58af4091fd521c90d8830dcbdbd8827b"),
];
pub const GCM_KATS: &[(&str, &str, &str, &str, &str, &str)] = &[
    ("2b6382839ead68ac811d857b8903a5c98fbed503d35624f2abae9d473bb4c0d1", "3", "8dee2b52be73ed32cd2b05db", "ee87fc90c580382113de3c18845bdfd1590a2e56b89ff816a379a365ba809ccc6d02979e2435828163638c09f73eae68cc6561c41c689b2d220d442ca6cccbf6", "d78c09c4757a9a0fce7e0c2f24b429af9216698c2cf1312788013b5166eb9b4cd48e4a732cf931d44fb3ab3769ae0f72849373317df616ef97ed3effb16fd22f", "708462a4453ba23c57a5118790c86154"),
    ("7ef3aafa9ef3f6403fc4afc63d8d8a32b3d72044094c6810a607fd4055005aeb", "7", "e7187be5ba4c624c9f9025e3", "6c0a75d0b1f2cb598aba00954e2db05e0de9808e43c6b959a5c9ac440803282886a970919a3b7e9a1c41735aed2721b62f2f83c5d57eeb1c56736489ff5bb74ee66d31c0ea6e4cf0897fc6ef6e09a0c6918b0671bedc1ee842bf1eb1d22a31c1101ef17b13536ecc984b4834fd0c8d6f7502b27da68591a1b84b456a60af89e05cfcb7177b44e50f503a86d0bab5f6222659af9b0aa53a81021f0079d00626b0348893a3fc2a52e0c9a80f71b22d2be0497c988954f18510026ab984dfee564f14898d79fa7d712ce1a3a17777f154b52279fffcaa4d4167c2b973b4fe6fd719a80504df59550b0de408186c7b0c005794bc90840629a5b392b01491612265c54872ecb821ab85a1625541b6aba43b2fbbe47a4038040f3fdc3222a8989ebbe7297d11bf50032ddfee2c32c7be938d0288a41c3d02fce7de8b1f71ba7da835d7d24d71df4e21a01fdb2c5dc19a635c5f43096ba7b895a95a74875cfb6435f8f9e014cd7294c64522d59bf6f04a31f321702c4b59814668ad405e29f37dba60753eef0a0193e5276310da53a67049248d7606d24ab5f6a5f9be93d83f851f6a57b2c9483fc6a8dd0ca81e6262132c810d41d2d8264385f28671fdc2a18aadca04e781ae8e2bf22897c1b41c29122884f2410927b486d73a020df2d5d597c672b82b1e1ed0da52d6cbe4f05c540bc3e62c6180f9bf5cef1fcccc4c957bf3c37b2c", "a98137ae51041438638345ffc18433bb1e5b0995d6b786eaa50164cce003ac02f84307084c28d43761f6a53fcdcef2336102eb1f95bbfbda90b2f4ecc85ff78387607749c035bb9b60c0165a5ac00af07bd9575e422974301a59327dadae95e56c96b2006d1d8423da16f5202e04d820ea1f8e4ea5590f574123fbbaf32477425a6be1a37a0225f472df62a81478166c755cb9a840269930f92feadac8ddc13ee740664cd4288a28ea84d37cadfdf3628e547652e05f81f0cc6106daa1ade8bd759035fd5976f51c1700811b7d27bed30f9dfeebc46e0aa4f2f8e7a7f0b5dfccc18b88210910c618451a307c906706a9a837907d5c8dfeed29d8fcb58b98a1d5945732cde1ebeb523d0faa22121032dff6c5967dff05aba39849f499b3c01ec0a8c5b1bf72d718518c0f908fb42460187614088e99d740b4cbe783426c7c548692b9974e311392823aec7b2b937b479eb61e3782ee12b245f3b0e39c3f017d55f628c2c495ec9f24d6bd1f085e8ec18a68b27662cdfebfadb4e3ba1268851e9bd97997a4bb8ad31d4039020c863989ec644cfa79ae3f974637f197dba1ad33e7bf7186c26c3b54a1ed388410076b9e749990d07c63d6fe77b58bf3359bea8da852dc76f363c5507cf37553dac9c1a9a3e60ff786c0517c3df85936e1f8b3819c6b201d25f96bad848cc5321255765b8ee039e5fd2c1beb2d16341ff6587a0b50", "3c38813653caeaf4b2d240e48eec0e4b"),
];
pub const CHACHA_KATS: &[(&str, &str, &str, &str, &str, &str)] = &[
    ("ce9c23690eb8913ec3f0a48348c701277cbe32e2aba7f55320af4d660c163bce", "b", "33f54506f85abf903e331396b956721c", "3fa5e66e7e7048dbb1d63f2df7c82a9af0afa352833a9e5598e3471c50dc8e0c87e322cd964dd499bc4545a52acbc3a9705d7156ab201ec26e92e22f04295211", "d711d54b4951efde95061db282532b063678bbe1d7d8f31dcbb95aa6614c43d8a6507198255931cdb09d5ea43693f7c2cd98eef252bbb54f1604bc8701e7b846", "bd27b3378211a1d761a321520dd56e74"),
    ("9420c63643f434b3631f23dcc272ce097f7d8e2bafca74103b0e8fde7be9e3b9", "2", "cec4de901577a81d35be413dc77c2a88", "479be5896467091e423f47a57a68ab9ebd1d4406b0bd562c6aec2c1088c09323df2b19a7f25ac0b69553e1cff3c8c830de4e01120b973216a49220be1110064a441a045f7d405c65272130c20499c7f08f95926eaaf87844a2dbe85d555d7c7e20005da0195b52894bf3b0e42d688568b9f2317bccc93314fc708c99ca842509a886bfbff668274559e7066fd1d5ed614976907b2de2e3a8eb309bf68ea661ad9376cc1f0a8058dcd908792b559a4027cd077d630c5a7f652a485de9a4f4a6df37f4f55846ec2bb27750265258a30912a851e6497994f250522f51e7cdf6f8cf3e7805c7056097342add33fd1849fc54ee25225e82f0a56bc3a2c7ba54e81cfc09712d152189334dbaf1d420659a99a0b4e48fbc7f4429445abee5774a790756b65ffb7ede5d76db0cc2ae17cb661a5fc7b34447392240a67d71b43ce887563368d7f04d034eff9f1303b0db580e12ad856dbd5e068457152c55d632326c87f40d65a34cc23973721b50fae8737cef35046adf5071aa8c890d9369d238a0960faf42f467d465ad33e063365097ed43345e27ea864c662cc2b55ee5877c27f3d1b6a52fa91dab98088241f22bd9c7d536b7d9a31fb67281218e07cbd240fddd43ed01b9d6a437598ec93ecf1564ac557b4714e19801cf2535b0af11b064b35c5d691eee20e6a91ef0906fc3f9dd4cf29180e0410fca2ba7b320579002aa4a3c28", "c0de3a46bf22c6e28e0c4df5e88c0a3a432d186f6ef60f14b6d45ee0ac169346ed50d88cba5e865f5392bbc9b87000ed63ef8018372a249ef42337947551f66e19487bb6a300366e28833a40dea761bce1e9fc9fb79288837c40c720988767f32dccf63625fb67a800b01d24989a0c8fb2a304177fe7c9ce7b963c7b4b5b6feeca1238e780b38c04d30cb987215ffc417ee7f1138df859816bb6d16dbdc9c16bd26c136bbc17a2683545b48aa733d10430a62f2c8bf7ab03dfdbbf1cc26710b2b4be231aeb3cdd527fd6b9125bb64337697febc6e5c2a04377d273ec87598d3b8835c51600d2ec1cb294b816a468b40115cd38cfc9c5f56c4f83464dc1502625ee41801d6de41892e03f342e1918ba9fd784eae7f4168e078a4e6bede36efff6dd52baa0748261aef729967b201ab2c5e3bb5da4edf769ecf26bca7ab7f12ffb52ddf45abfe563625457d2a04ac7a7764a771ae1460d3407756f53ceb35e630e789e8fa90933c7e3c0a745beb28ee0bbb2e1a157db9d6722a251a1ad35887bd8847fd55402c07d305b80c42682cfa2097efca1d7b1a2a06d17707169b68a0c1f4b96ca84fdcf6b7c6775646539573487c1668e0b1b9219f8f15df739662a5902b00b36b15796d4b6b85f6cf56151d8fde7dc5223dbcceb72e33f308a85378cf690fd7fbff66240d84dcb79b367f9e5f99aaa8467bb6643141d2cfc493731dcb6", "c3a0e353c5fba850313831b13a629988"),
];
pub const COMPOSED_KATS: &[(&str, &str, &str, &str, &str, &str)] = &[
    ("5c933b9cf052c73923591b125012da2850efe1bacf64659ad1276350101e28d7deba7584f20cfb1443762fb1220c54b33eced3f5b177427c40de6257803fe012486c5125762eb6e805bcf771238af61eacd6809dc0740377b4ced513f5d55c38", "0", "cb4023c18cd2db81d5211f62dd671790", "0bbc036fdd399a6f342c997f9386a90c1ecc7d113e56bd777c301e188d3258ea1836c367651418a266378b0eff591c86c23e1c87302a30d6dbcac477934d3b8fe884ea66201ca68d87dd1f7a24e78ed1fe32ec4026300c916a0501e230ce96dc2813d569e7c1f454a37cb4b2b035747b2032b73fe1f9d4c6af6ae651fd7814f7467573ac7aca89da475a9b37516e57175c169fefb4a30ba3f5800d285af7a23920d926a78bbeb3d19191e34158885ac5dadec99910cf21cad5ad54b9f87c624488469aadb0c191c15b4cdc68ed0f540bec6f49404ed6b3ffee326ea4202c7ccab714cef75b3133380e43f33211d80c97161b1dc6a2972e0de020a33ce9bc4ffb1e684c779eca2bc729852540116ab45130f3f05678da869a319bcb16423e4ab1ef62bc79bfc714aa3cd445c04c059433bbf28a2f829fc3d89177b9ee634ad0eab50678e85f46f527cdadaa61bc473178b38d57eec3a040963049589a530f5cfd81230ab6628d29252bec04c9a9b1712eec6d69fcaa4acec827427ccc186751974e8ea818b406168a56e5eca91f61c1d233f5d08e6dea3ab42478d7df48474fba42f9694de1920ae306ae9cec818c7b97a5551bdd9fcbbb52d5480deea814a6499402f30030a07a2ede04a6012b1721e9c1c062b907ae600071d95d484e20d38e40da32b06be854a15b85def4351ddccedee04be0e1aa76d29a5b5a2cf9f2ae4f", "b9dcdffd703977584aa2734cc81d443e7119ffba937d7e8f79fae81ad132f85dc3f429f7c127312aa9cb3f5fc1f7093ddf8f9eeac9dd219223c416281f5142232a3a65a4d68d9d1d262ef4507e6a88604b0cbbdcef09939d9ed64764014b79fcf6ff5faf0a65db290e9da3f53a79a90b39a7628675531d6afedeac80506984339002ab7aa79dc924a4e59226ba0d91ec7123433a138b5139a5693caa0fd073a3ee203cfb2573203c3145767bd1907957ec9546c2f9c349d56f764863624237e039cbf417abbe85c2859c9307f3e14220f5d06b4d58b217905da9b50657868888a8889849f5e1080fcd8b4ef5d68c9d1fb5e2bfbd2870e28f267595705fdce10f13f5432853a4491810779671a093cebca73cbeee6b8b8ec21be065298d3f947604e1df90e042f8e551958991499fdc871f819df0d5d3aee4c1d9b530f17867a7027e4e1470fddac91dc87b49c1f30b60aa7ae279ef9cbac738b1f5acbda041c3088d0a18ad9a59dcb0208bb306e460b2df7cfea7acdcadf4a20fe8de4a05b61f069417d4a74eb5f16640d36311b6eb138bda1f0d2d1193b0875424b5174dfc425c7dd9f68060b576df5e98c7c2f59de2c93fa94a6eac22caaed88f4f5f3dd5bb753e60ab4c9d0dfa2c937c8412bc4d8ebda562d18dc4ad0af84e2187a1022436192c99b4efa3b667c9f202004febea5851e13f15f3e6a57754eedeba12540bbd", "cf1fea9736214a5c5af0436e3a98a6321f05e34f8077cf06c2917b88f7018d66"),
    ("b7d029b5b1efefa7c0c4ccc6dff0b9065d21fbc90576ae8e802561481e1859886bb29e7f75018f4802c7cadda30216bbe00ffd9021fc71cfede89e40eb66a4d5d4b7056eb9891eb04b8f209a7fc5e7f0f54293606b00627bac77d3648611da95", "2a", "ba190818578de5f42fe61b8084f90086", "a6e28a269bda6115aebac3ff5b1aa26f936c75a3456d6062d7f7ec6dedbc7089bdc63bfbf59eb17013e7330e761fd7aa8bfc8e73ad0b4d1b5be400e1e90e069eccb2d97a5c75e72c056f2666a8ca30ae8645124f269303ff98e1e2d6f9ff3cb315071b139781f47a49b764eb8343b17b6d9c6e5b95a717da760401dd6f2d4feefa4f021beb0999fe864a18ad2a153040a1c311f903973470da9966e88cee512875d69f30d71698fc25e6883e33f226c96ce17440c9b2bd9e9c78570cf52df877e8d3b914308132fbf12f176edab12780381dd199055090f9574120ec5a995a7ba8cd16e88b447d76e09446707deed553c99fd67934cdd888154fd54cc4f80b2b2e9896ef03fd0666d1247c56872f8f35e57674d99afddedd823034f34f673a8d33b945374af3f3fd264380c420fdd13955bcaca0f2d3ad2152a6778d5fde706e06b43a4632c3bdc66c5ff83e34c55501d5cfbf51f0bcc36e6d9746ea784a3d9ebb7b855dbaa1e7a87baf57927fb5eb25cca56b436e7736df1626beb3abe6d42e924e4caf84c83b64bce004f037290b04160f46a82b25e9aa0d74e7db4935b15e3b2f48cbce389de51cc7eef8e838cc58a9bf672bd95502129fc720df0d63d2af66c3a8a0472fe8bb6a32fd5b5cfc39aacbc453fad54c419e22b8a0ce778f5d314272850a76d85b5a54c838adf9a1f09354f9ace10ce1fae8ab8913318141bc1a", "a796935b778055d447fa5637e361504164c0408f93ac31047c7cfb9586226d1f80e10df3e54f0ca451860d7842e341be7fb0af21a2b4ca324fb6f6a808959bf4e6b65fc73b41767739946f93b8dede5611ea8988c629e20fa4e3d65488c16e471d5c76f559bbf51050199f2fa87a1201499363c99cda6d4b191b2583dc0b2c669daf41cd5d1a692722a17dbad6dc6536d8baa273c70cd42d60f3cb338e41f1aa1b61c52f656d1181af5f00fd7adce7d8b1e12ca223f75e725efa8c48799b27c18ef1736554e22cad19b5c87211d25afe4997909d774aed7098dc8d31b5f53386ac694cb7c1170dc7212e82c13d9a5e2574cffadd670757caa6516467d16d8b14b3cea21a2c0f19babc2c35d7bca9421fbdaffa15b4c9035b6d9c971c58ea76291500a7ac46d04a1f0bb7aa0df21d98207e641de2423956bd869c1038d89fc92dd8857040ef456ab932ac22435e14699170283fd8b5d887ba69748583b582942a8018cd5cc78031bb9cc6c1754d8968bb35eeb61d37b2469d134d3e9cb073dccfe42ee002e30d14fcec62d0621237e00b957b39d297ee16176b2ad111af9aae2ae7462f2493e2438db534641be7792a9a92f8045142efc12bde3cdc5406fe5dbdefd97dd38039c64f334cb458f67c500609720f6a2641524fc24f9ef1b203b2127a3d3edd732ee037e80d07f5acfd493080d424d3510bdaceb80b47c4d87de94d", "5148d29a8806bc77831b5b366bc5e56ef54d2d04a7757d775d3fd0bbced8ffcd"),
];
